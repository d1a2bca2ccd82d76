"""Executable finite presentations for categories of groups with operations:
object validation, derived actions, (pre)crossed modules and (pre)cat1
objects, centers, commutators, singularizations and central extensions,
over exact rationals and prime fields."""

__version__ = "0.1.0"
