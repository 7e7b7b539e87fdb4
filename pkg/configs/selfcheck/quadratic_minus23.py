_base_ = [
    '../_base_/fields/quadratic_minus23.py', '../_base_/selfcheck_suite.py',
    '../_base_/default_runtime.py'
]
