"""
Point counts and traces of Frobenius over prime fields.
"""
from .points import count_points, count_points_exhaustive, local_data_sweep, residue_table, trace
