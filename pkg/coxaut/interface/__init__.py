"""Transport adapters for the toolkit."""
