"""Current version of package aoi_tradeoff."""
__version__ = "1.0.0"
