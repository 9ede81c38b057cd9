"""Storage module: graph files, fixtures and text renderings."""
