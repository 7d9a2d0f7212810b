"""DataFrame schemas of the campaign output files."""

from pandera import Check, Column, DataFrameSchema

SELECTION_TAGS = ['INIT', 'UCB', 'PE']

trials_schema = DataFrameSchema(
    columns={
        'function': Column(dtype='str', nullable=False),
        'variant': Column(dtype='str', nullable=False),
        'trial': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'iteration': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'slot': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'eval_index': Column(dtype='int64', checks=[Check.ge(1)], coerce=True),
        r'^x_\d+$': Column(dtype='float64', regex=True, nullable=False, coerce=True),
        'y': Column(dtype='float64', nullable=False, coerce=True),
        'best_so_far': Column(dtype='float64', nullable=False, coerce=True),
        'simple_regret': Column(
            dtype='float64',
            checks=[Check.ge(0)],
            nullable=False,
            coerce=True,
        ),
        'cumulative_regret': Column(dtype='float64', nullable=False, coerce=True),
        'selection_tag': Column(dtype='str', checks=[Check.isin(SELECTION_TAGS)]),
        'region_size': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'region_exhausted': Column(dtype='bool', coerce=True),
    },
    checks=[
        Check(
            lambda df: (df['best_so_far'] >= df['y']).all(),
            error='best_so_far must dominate every value',
        ),
    ],
    strict=False,
)

summary_schema = DataFrameSchema(
    columns={
        'function': Column(dtype='str', nullable=False),
        'variant': Column(dtype='str', nullable=False),
        'n_trials': Column(dtype='int64', checks=[Check.ge(1)], coerce=True),
        'budget': Column(dtype='int64', checks=[Check.ge(1)], coerce=True),
        'success_1pct': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'success_5pct': Column(dtype='int64', checks=[Check.ge(0)], coerce=True),
        'mean_evals_1pct': Column(dtype='float64', nullable=True, coerce=True),
        'mean_evals_5pct': Column(dtype='float64', nullable=True, coerce=True),
        'best': Column(dtype='float64', coerce=True),
        'mean_best': Column(dtype='float64', coerce=True),
        'sd_best': Column(dtype='float64', checks=[Check.ge(0)], coerce=True),
    },
    checks=[
        Check(
            lambda df: (df['success_1pct'] <= df['n_trials']).all()
            and (df['success_5pct'] <= df['n_trials']).all(),
            error='Success counts cannot exceed the number of trials',
        ),
        Check(
            lambda df: (df['success_1pct'] <= df['success_5pct']).all(),
            error='Reaching the 1% target implies reaching the 5% target',
        ),
    ],
    strict=True,
)

regret_schema = DataFrameSchema(
    columns={
        'function': Column(dtype='str', nullable=False),
        'variant': Column(dtype='str', nullable=False),
        'eval_index': Column(dtype='int64', checks=[Check.ge(1)], coerce=True),
        'mean_simple_regret': Column(
            dtype='float64', checks=[Check.ge(0)], coerce=True
        ),
        'regret_of_mean': Column(dtype='float64', checks=[Check.ge(0)], coerce=True),
        'mean_cumulative_regret': Column(dtype='float64', coerce=True),
        'best_trial_simple_regret': Column(
            dtype='float64', checks=[Check.ge(0)], coerce=True
        ),
    },
    strict=True,
)
