"""Infrastructure layer: adapters, config, and containers."""
