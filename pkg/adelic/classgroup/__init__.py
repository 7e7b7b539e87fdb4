from .class_group import (ClassGroup, IdealClass, class_group, class_of_form,
                          ideal_class_of, principal_class)
from .forms import (BinaryQF, compose, form_of_ideal, ideal_generator,
                    ideal_of_form, principal_form, reduced_forms)
from .fractional_ideal import (FractionalIdeal, frac_eq, frac_factorization,
                               frac_inv, frac_mul, from_exponents,
                               is_principal)
from .idele_class import (IdeleClass, KernelWitness, ideal_class_section,
                          idele_class_eq, idele_class_to_ideal_class,
                          is_in_kernel_subgroup)

__all__ = [
    'ClassGroup', 'IdealClass', 'class_group', 'class_of_form',
    'ideal_class_of', 'principal_class', 'BinaryQF', 'compose',
    'form_of_ideal', 'ideal_generator', 'ideal_of_form', 'principal_form',
    'reduced_forms', 'FractionalIdeal', 'frac_eq', 'frac_factorization',
    'frac_inv', 'frac_mul', 'from_exponents', 'is_principal', 'IdeleClass',
    'KernelWitness', 'ideal_class_section', 'idele_class_eq',
    'idele_class_to_ideal_class', 'is_in_kernel_subgroup'
]
