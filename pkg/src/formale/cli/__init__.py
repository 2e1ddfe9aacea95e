"""
Command line interface for formale.
"""
