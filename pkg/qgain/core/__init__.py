"""
Core module containing value types, exceptions, and enums.
"""
