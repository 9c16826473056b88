"""
Finite rings with finite automorphism groups: arithmetic, fixed rings, radicals and theorem checks.
"""
