"""
Test package for paging-lab.
"""
