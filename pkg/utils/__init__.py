"""Utils module"""
from utils.point_io import read_points, write_points, infer_format, FORMATS
