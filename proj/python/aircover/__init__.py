"""TN/NTN link-budget and coverage model for low-altitude aircraft in urban
environments. Thin wrapper over the C++ core extension."""

from aircover._core import *  # noqa: F401,F403

__version__ = "0.1.0"
