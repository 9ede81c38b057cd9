"""Command-line interface for the fully optimal spanning tree toolkit."""
