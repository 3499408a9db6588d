"""
Unit tests for the tournaments toolkit.
One subpackage per library area plus the command-line surface.
"""
