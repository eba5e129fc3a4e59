"""Building change extraction from one up-to-date image and a historical mask."""

__version__ = "0.1.0"
