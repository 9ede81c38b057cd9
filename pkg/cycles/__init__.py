"""Signed edge sets, spanning trees, cycles and cocycles."""
