#include "aircover/cli.hpp"

int main(int argc, char** argv) {
    return aircover::cli_main(argc, argv);
}
