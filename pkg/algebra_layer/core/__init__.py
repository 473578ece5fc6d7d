"""
Core operations of the Algebra Layer.
"""
