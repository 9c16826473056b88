"""
Models package for the ring invariants toolkit.
"""

# This file makes the models directory a Python package
