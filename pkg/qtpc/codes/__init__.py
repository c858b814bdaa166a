from .distance import Distance, min_distance
from .base import LinearCode
from .families import (CyclicCode, FireCode, ReedSolomonCode, bch,
                       fire_code, hamming, mds_dual_containing, reed_solomon,
                       repetition)
