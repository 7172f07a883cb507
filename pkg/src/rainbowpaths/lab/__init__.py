from .aravind import (
    AravindResult,
    CounterexampleReport,
    Task,
    check_aravind,
    check_aravind_unpruned,
    read_checkpoint,
    search_order,
)
from .claims import (
    StarWitness,
    first_non_monotone_rainbow_3path,
    verify_monotone_rainbow_3paths,
    verify_rainbow_max_degree,
)
from .partitions import count_colour_partitions, enumerate_colour_partitions
from .stable_cover import CoverPathWitness, StableCover, search_stable_cover_path
