"""Tests for pygrassmannph."""
