"""Test suite for the coxaut package."""
