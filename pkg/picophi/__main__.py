"""
Entry point for python -m picophi.
"""

from picophi.cli.app import main

if __name__ == "__main__":
    main()
