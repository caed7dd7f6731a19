"""Top-level tests package."""
