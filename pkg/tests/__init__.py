"""
Test suite for qgain.
"""
