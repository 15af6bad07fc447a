"""Tests for trotterkit."""
