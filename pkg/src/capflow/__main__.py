"""Entry point for python -m capflow."""

from .cli import main

if __name__ == "__main__":
    main()
