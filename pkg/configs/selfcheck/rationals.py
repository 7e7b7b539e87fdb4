_base_ = [
    '../_base_/fields/rationals.py', '../_base_/selfcheck_suite.py',
    '../_base_/default_runtime.py'
]
