"""Tests for adfnlp."""
