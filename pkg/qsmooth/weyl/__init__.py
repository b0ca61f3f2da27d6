from .gwa import (GWASpec, gwa_presentation, gwa_match, smoothness_check,
                  nakayama_check, find_gwa_structure)
