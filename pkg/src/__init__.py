"""MISO multicast queues - simulation and delay analysis for content-centric downlinks."""

__version__ = "0.1.0"
