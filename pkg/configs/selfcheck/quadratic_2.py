_base_ = [
    '../_base_/fields/quadratic_2.py', '../_base_/selfcheck_suite.py',
    '../_base_/default_runtime.py'
]
# class groups of real quadratic fields are not computed
checks = [
    dict(type='ValuationAxioms', samples=200),
    dict(type='RepresentativeIndependence', samples=200),
    dict(type='Uniformizers'),
    dict(type='FactorizationRoundTrip', samples=100),
    dict(type='LocalizationRoundTrip', samples=100),
    dict(type='SurjectivityAndKernel', samples=100),
]
