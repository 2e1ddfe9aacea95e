"""
Subcommands of the formale command line.
"""
