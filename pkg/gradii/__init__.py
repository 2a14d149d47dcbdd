"""Radii of convexity, starlikeness and close-to-convexity of sections of
functions in the class G(alpha)."""
from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("gradii")
except PackageNotFoundError:
    __version__ = "0.0.0"
