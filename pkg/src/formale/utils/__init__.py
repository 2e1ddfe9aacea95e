"""
Logging, errors, validation and the trace cache.
"""
