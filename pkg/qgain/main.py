"""
Main application entry point for qgain.
"""

from .cli.app import main

__all__ = ["main"]
