checks = [
    dict(type='ValuationAxioms', samples=200),
    dict(type='RepresentativeIndependence', samples=200),
    dict(type='Uniformizers'),
    dict(type='FactorizationRoundTrip', samples=100),
    dict(type='LocalizationRoundTrip', samples=100),
    dict(type='SurjectivityAndKernel', samples=100),
    dict(type='ClassGroupQuotient', samples=50),
]
