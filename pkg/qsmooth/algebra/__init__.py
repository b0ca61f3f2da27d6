from .scalars import (Parameter, ScalarField, scalar_field, scalar_arith,
                      poly_gcd, poly_derivative)
from .elements import Element
from .presentation import (Generator, GeneratorTable, RewriteRule,
                           Presentation, normal_form, star_element,
                           validate_presentation)
from .confluence import confluence_check
from .morphism import (MorphismSpec, apply_morphism, verify_morphism,
                       verify_automorphism, compose)
