"""
Main entry point for the formale package.
"""
from .cli.main import app

if __name__ == '__main__':
    app()
