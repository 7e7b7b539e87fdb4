_base_ = [
    '../_base_/fields/function_field_f4.py', '../_base_/selfcheck_suite.py',
    '../_base_/default_runtime.py'
]
