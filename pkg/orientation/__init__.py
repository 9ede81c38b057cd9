"""Bipolar orientations, spanning-tree activities and the fully optimal spanning tree criterion."""
