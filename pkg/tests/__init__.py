"""doublegraph tests."""
