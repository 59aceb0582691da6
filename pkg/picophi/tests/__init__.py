"""
PicoPhi test suite.
"""
