"""Stratum dimensions of quantum matrices from Cauchon diagrams."""
