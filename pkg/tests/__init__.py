"""Test suite for grpwild."""
