"""Flat tori, slope graphs, and electrified distances."""

try:
    from . import _teichlab as _core  # installed layout: extension inside the package
except ImportError:  # in-tree CMake build: extension sits on sys.path by itself
    import _teichlab as _core

ContinuedFraction = _core.ContinuedFraction
FoliationVec = _core.FoliationVec
LabConfig = _core.LabConfig
Slope = _core.Slope
TeichPoint = _core.TeichPoint

boundary_map_audit = _core.boundary_map_audit
delta_four_point = _core.delta_four_point
extremal_length = _core.extremal_length
farey_ball = _core.farey_ball
farey_distance = _core.farey_distance
geodesic_path = _core.geodesic_path
geodesic_segment = _core.geodesic_segment
hv_pair = _core.hv_pair
intersection = _core.intersection
neighbor_fan = _core.neighbor_fan
qi_audit = _core.qi_audit
quasi_isometry_fit = _core.quasi_isometry_fit
ray_point = _core.ray_point
ray_profile = _core.ray_profile
segment_accumulation = _core.segment_accumulation
separation_profile = _core.separation_profile
teich_distance = _core.teich_distance

__version__ = _core.__version__
__all__ = [name for name in dir() if not name.startswith("_")]
