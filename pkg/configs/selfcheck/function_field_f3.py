_base_ = [
    '../_base_/fields/function_field_f3.py', '../_base_/selfcheck_suite.py',
    '../_base_/default_runtime.py'
]
