"""Lissajous knot projections and their invariants."""
