"""
Main entry point for the star-chromatic package.
"""

from .cli import main

if __name__ == "__main__":
    main()
