"""Zone covers of partial cubes."""
