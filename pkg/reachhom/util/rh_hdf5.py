"""
Writes chain complexes, homology summaries and check reports into generic
hdf5 files, and reads them back.

Every entry is a group with NX_class NXentry. Labels of basis elements are
stored as canonical JSON, differentials as flattened integer arrays (a
numerator and a denominator array over Q) with their shape as attribute.
"""

__author__ = 'reachhom'

import os
import json
import time
import logging
from fractions import Fraction

import numpy
import h5py

from reachhom.util import congruence
from reachhom.util.rh_util import Ring, canonical_json
from reachhom.util.rh_objects import HomologyGroup, HomologySummary
from reachhom.homology import linalg
from reachhom.homology.homalg import FreeChainComplex

LOGGER = logging.getLogger(__name__)

CODE = "ReachHom"


def _create_file(filename, creator, overwrite):
    if os.path.isfile(filename) and overwrite:
        os.remove(filename)
        LOGGER.info("%s: file deleted %s", creator, os.path.basename(filename))

    if not os.path.isfile(filename):
        f = h5py.File(filename, 'w')
        # points to the default data to be read
        f.attrs['default']      = 'entry'
        f.attrs['file_name']    = filename
        f.attrs['file_time']    = time.strftime("%Y-%m-%d %H:%M:%S", time.gmtime())
        f.attrs['creator']      = creator
        f.attrs['code']         = CODE
        f.attrs['HDF5_Version'] = h5py.version.hdf5_version
        f.attrs['h5py_version'] = h5py.version.version
        f.close()

def _open_entry(filename, subgroupname):
    f = h5py.File(filename, 'a')
    if subgroupname in f: del f[subgroupname]
    entry = f.create_group(subgroupname)
    entry.attrs['NX_class'] = 'NXentry'
    return f, entry

def _decode(value):
    if isinstance(value, bytes): return value.decode("utf-8")
    if isinstance(value, numpy.ndarray) and value.dtype.kind in ("S", "O") and value.shape == ():
        return _decode(value[()])
    return value

def _tupled(value):
    return tuple(_tupled(v) for v in value) if isinstance(value, list) else value

def _write_ring(entry, ring):
    entry.attrs['ring'] = ring.name
    if ring.p is not None: entry.attrs['p'] = ring.p

def _read_ring(entry):
    name = _decode(entry.attrs['ring'])
    return Ring(name, int(entry.attrs['p'])) if 'p' in entry.attrs else Ring(name)


#########################################################################################
#
# CHAIN COMPLEXES
#
#########################################################################################

def save_complex_2_hdf5(complex_, filename, subgroupname="complex", overwrite=True):
    """
    :param complex_: FreeChainComplex
    :param filename: path of the hdf5 file
    :param subgroupname: entry holding the complex; replaced if present
    :param overwrite: start a new file
    """
    _create_file(filename, "save_complex_2_hdf5", overwrite)
    f, entry = _open_entry(filename, subgroupname)

    ring = complex_.ring
    _write_ring(entry, ring)
    entry.attrs['name'] = complex_.name
    entry.attrs['complete'] = bool(complex_.complete)
    entry.attrs['top_degree'] = complex_.top_degree
    entry["ranks"] = numpy.array(complex_.ranks(), dtype=numpy.int64)

    for k in range(complex_.top_degree + 1):
        degree = entry.create_group("degree_%d" % k)
        degree["labels"] = canonical_json(complex_.basis[k])

        values = [ring.to_python(x) for row in linalg.rows_of(complex_.boundary(k)) for x in row]
        if ring.name == Ring.RATIONALS:
            degree["boundary"] = numpy.array([v.numerator for v in values], dtype=numpy.int64)
            degree["boundary_denominator"] = numpy.array([v.denominator for v in values], dtype=numpy.int64)
        else:
            degree["boundary"] = numpy.array(values, dtype=numpy.int64)
        degree["boundary"].attrs['shape'] = numpy.array(complex_.boundary(k).shape, dtype=numpy.int64)

    f.close()
    LOGGER.info("save_complex_2_hdf5: file written/updated %s", os.path.basename(filename))

def load_hdf5_2_complex(filename, filepath="complex"):
    congruence.checkFile(filename)
    with h5py.File(filename, 'r') as f:
        if filepath not in f: raise congruence.InputError("no entry %s in %s" % (filepath, filename))
        entry = f[filepath]
        ring = _read_ring(entry)

        basis, differentials = [], []
        for k in range(int(entry.attrs['top_degree']) + 1):
            degree = entry["degree_%d" % k]
            basis.append([_tupled(label) for label in json.loads(_decode(degree["labels"][()]))])

            m, n = (int(x) for x in degree["boundary"].attrs['shape'])
            values = [int(x) for x in degree["boundary"][()]]
            if "boundary_denominator" in degree:
                values = [Fraction(a, int(b)) for a, b in zip(values, degree["boundary_denominator"][()])]
            differentials.append(linalg.build([values[i * n:(i + 1) * n] for i in range(m)], ring, cols=n))

        return FreeChainComplex(ring, basis, differentials, complete=bool(entry.attrs['complete']),
                                name=_decode(entry.attrs['name']))


#########################################################################################
#
# SUMMARIES AND REPORTS
#
#########################################################################################

def save_summary_2_hdf5(summary, filename, subgroupname="homology", overwrite=True):
    _create_file(filename, "save_summary_2_hdf5", overwrite)
    f, entry = _open_entry(filename, subgroupname)

    _write_ring(entry, summary.ring)
    entry["degree"] = numpy.array([group.degree for group in summary.groups], dtype=numpy.int64)
    entry["betti"] = numpy.array(summary.betti_numbers(), dtype=numpy.int64)
    for group in summary.groups:
        entry["torsion_%d" % group.degree] = numpy.array(group.torsion, dtype=numpy.int64)

    f.close()
    LOGGER.info("save_summary_2_hdf5: file written/updated %s", os.path.basename(filename))

def load_hdf5_2_summary(filename, filepath="homology"):
    out = load_hdf5_2_dictionary(filename, filepath)
    ring = Ring(out["ring"], out["p"]) if "p" in out else Ring(out["ring"])
    return HomologySummary(ring, [HomologyGroup(int(k), int(b), [int(t) for t in out["torsion_%d" % k]])
                                  for k, b in zip(out["degree"], out["betti"])])

def save_document_2_hdf5(document, filename, subgroupname="report", overwrite=True):
    """Any JSON document, e.g. a check report, as one string dataset."""
    _create_file(filename, "save_document_2_hdf5", overwrite)
    f, entry = _open_entry(filename, subgroupname)
    entry["document"] = canonical_json(document)
    f.close()
    LOGGER.info("save_document_2_hdf5: file written/updated %s", os.path.basename(filename))

def load_hdf5_2_dictionary(filename, filepath):
    """Datasets and attributes of one entry; strings decoded, arrays as lists."""
    try:
        with h5py.File(filename, 'r') as f:
            entry = f[filepath]
            out = {}
            for key, value in entry.attrs.items():
                value = _decode(value)
                out[key] = value.item() if isinstance(value, numpy.generic) else value
            for key, dataset in entry.items():
                if not isinstance(dataset, h5py.Dataset): continue
                value = _decode(dataset[()])
                out[key] = value.tolist() if isinstance(value, numpy.ndarray) else value
            if "document" in out: out["document"] = json.loads(out["document"])
            return out
    except (OSError, KeyError) as error:
        raise congruence.InputError("failed to load %s from h5 file %s: %s" % (filepath, filename, error))
