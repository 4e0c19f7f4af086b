from .cycles import Cycle, Finite, Infinity, pairing, point_embed, point_extract
from .field_core import Field, make_field, parse_field
from .quad_space import QuadSpace
from .scene import Scene, load_scene, run_scene
from .transforms import InversiveWord, as_matrix, map_pair_to_pair, reflect, reflect_point
from .verify import VerdictReport, verify as run_verify
