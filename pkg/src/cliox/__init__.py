"""Clio-X: a self-contained compute-to-data data space.

Archives publish priced, license-governed document collections; researchers
buy timed access and run privacy-preserving analyses next to the data,
receiving sanitized aggregates only.  Every state change lands in a
hash-chained audit log and settles through simulated escrow.
"""

__version__ = "0.1.0"
