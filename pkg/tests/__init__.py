"""
Tests for the entanglement_harvest package.
"""
