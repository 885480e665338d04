"""halvecut: line halving and convex guarding over planar point sets."""

__version__ = "0.1.0"
