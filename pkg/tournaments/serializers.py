"""
Plain-dict serializers for every report the toolkit emits.
"""


def serialize_digraph(digraph):
    return {
        'n': digraph.n,
        'arcs': [[u, v] for u, v in digraph.arcs()],
    }


def serialize_girth(result):
    return {
        'kind': result.kind.value,
        'length': result.length,
        'witness': list(result.witness),
    }


def serialize_sk_report(report):
    data = {
        'k': report.k,
        'holds': report.holds,
        'counterexample': list(report.counterexample) if report.counterexample else None,
        'sets_examined': report.sets_examined,
    }
    if report.dominator_map is not None:
        data['dominator_map'] = [
            {'set': list(subset), 'dominator': dominator}
            for subset, dominator in report.dominator_map.items()
        ]
    return data


def serialize_audit(audit):
    return {
        'n': audit.n,
        's2': audit.s2,
        'girth': serialize_girth(audit.girth),
        'bound': audit.bound,
        'pass': audit.status.value,
    }


def serialize_certificate(certificate):
    """Certificate fields: value, witness, witness_triples, lower_bound_record."""
    record = certificate.lower_bound_record
    return {
        'mode': certificate.mode,
        'value': certificate.value,
        'witness': list(certificate.witness),
        'witness_triples': {
            str(v): list(triple) for v, triple in sorted(certificate.witness_triples.items())
        },
        'lower_bound_record': None if record is None else {
            'size': record.size,
            'sets_examined': record.sets_examined,
            'search_nodes': record.search_nodes,
        },
    }


def serialize_greedy_steps(steps):
    return [
        {
            'remaining': step.remaining,
            'vertex': step.vertex,
            'tail_count': step.tail_count,
            'remaining_after': step.remaining_after,
        }
        for step in steps
    ]


def serialize_pair_tail(report):
    return {
        'holds': report.holds,
        'counterexample': list(report.counterexample) if report.counterexample else None,
        'sets_examined': report.sets_examined,
    }


def serialize_theorem_report(report):
    premises = report.premises
    domination = report.conclusion_domination
    pair_tail = report.conclusion_pair_tail
    return {
        'premises': {
            'k': premises.k,
            'girth': serialize_girth(premises.girth),
            'sk': serialize_sk_report(premises.sk),
        },
        'conclusion_domination': {
            'claimed_lower_bound': domination.claimed_lower_bound,
            'exact': serialize_certificate(domination.exact),
            'vacuous': domination.vacuous,
            'pass': domination.passed,
        },
        'conclusion_pair_tail': {
            'applicable': pair_tail.applicable,
            'report': serialize_pair_tail(pair_tail.report) if pair_tail.report else None,
            'pass': pair_tail.passed,
        },
        'pass': report.passed,
    }


def serialize_search_report(report):
    return {
        'parameters': report.parameters,
        'witnesses': [serialize_digraph(witness) for witness in report.witnesses],
        'exhausted': report.exhausted,
        'nodes_explored': report.nodes_explored,
        'leaves_visited': report.leaves_visited,
        'min_order': report.min_order,
        'exhausted_orders': report.exhausted_orders,
        'note': report.note,
    }
