#!/usr/bin/env python3
"""
Simultaneous Root Finder - Entry Point

Run this script to use the command-line interface without installing.
"""

import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.app import main

if __name__ == "__main__":
    sys.exit(main())
