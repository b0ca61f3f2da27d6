import multiprocessing as mp

from qsmooth import catalog
from qsmooth.algebra.utils import QSmoothError, log

from .witness import (FAIL, direct_substitution, gwa_witness,
                      morphism_witness)

DIRECT = {
    'wp': ('wp-to-su2q', lambda l: {'a': 'beta.beta*',
                                    'b': '.'.join(['alpha'] * l + ['beta'])}),
}


def gwa_task(k, l):
    p = catalog.get_algebra('A', l=l, k=k)
    status, witness = gwa_witness(p)
    smooth = witness.get('verdict') == 'smooth-dim-2'
    # gcd(p, p') = a^max(k-1, 0)
    want_gcd = ['0'] * max(k - 1, 0) + ['1']
    ok = status != FAIL and smooth == (k in (0, 1)) \
        and witness.get('gcd') == want_gcd
    return dict(kind='gwa', k=k, l=l, ok=ok, status=status,
                verdict=witness.get('verdict'),
                gcd=witness.get('gcd_text'),
                nakayama=witness.get('nakayama'))


def tower_task(name, l):
    edges = []
    ok = True
    for m in catalog.get_tower(name, l):
        edge_ok, witness = morphism_witness(m)
        ok = ok and edge_ok
        edges.append(dict(edge=m.name, ok=edge_ok,
                          failures=witness['failures']))
    if name in DIRECT:
        edge, images = DIRECT[name]
        mismatch = direct_substitution(catalog.get_morphism(edge, l),
                                       images(l))
        ok = ok and not mismatch
        edges.append(dict(edge=edge + ' (direct)', ok=not mismatch,
                          failures=mismatch))
    return dict(kind='tower', name=name, l=l, ok=ok, edges=edges)


TASKS = {
    'gwa': gwa_task,
    'tower': tower_task,
}


def sweep_tasks(kind, max_k=3, max_l=4):
    if kind == 'gwa':
        return [('gwa', (k, l)) for k in range(max_k + 1)
                for l in range(1, max_l + 1)]
    return [('tower', (name, l)) for name in sorted(catalog.TOWERS)
            for l in range(1, max_l + 1)]


def run_task(index, kind, args):
    try:
        result = TASKS[kind](*args)
    except QSmoothError as e:
        log.error('%s%s failed: %s', kind, args, e)
        result = dict(kind=kind, args=list(args), ok=False, error=str(e))
    result['index'] = index
    return result


def mp_verify(tasks, q):
    # presentations are rebuilt in the worker from catalog names
    q.put([run_task(index, kind, args) for index, (kind, args) in tasks])


def task_allocation_per_worker(tasks, num_workers):
    tasks_each_worker = [[] for k in range(num_workers)]
    for idx, task in enumerate(tasks):
        tasks_each_worker[idx % num_workers].append((idx, task))

    return tasks_each_worker


def run_sweep(tasks, num_workers=1):
    """Results of every task, in task order."""
    if num_workers <= 1:
        return [run_task(i, kind, args) for i, (kind, args) in enumerate(tasks)]

    tasks_each_worker = [t for t in task_allocation_per_worker(tasks,
                                                               num_workers)
                         if t]
    ctx = mp.get_context('spawn')
    q = ctx.SimpleQueue()
    processes = []
    for worker_tasks in tasks_each_worker:
        p = ctx.Process(target=mp_verify, args=(worker_tasks, q))
        p.start()
        processes.append(p)

    results = []
    for _ in processes:
        results.extend(q.get())

    for p in processes:
        p.join()

    log.info('sweep of %d tasks on %d workers done', len(tasks),
             len(processes))
    return sorted(results, key=lambda r: r['index'])
