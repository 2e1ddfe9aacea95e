"""
Application settings and per-invocation run configuration.
"""
from .run import Command, OutputFormat, RunConfig
from .settings import AppSettings, get_config, reset_config
