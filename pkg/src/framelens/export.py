"""Flat record and CSV export of corpus statistics.

Every statistic flattens into a list of dicts with a fixed column order, so
the same shape feeds the CSV writer, the HTTP responses, and the CLI output.
Histogram exports always state both bucket boundaries explicitly.
"""

from __future__ import annotations

import csv
import io

from .syntax import annotation_to_record


def frame_frequency_records(frequencies):
    return [
        {"frame": frame, "count": count}
        for frame, count in sorted(frequencies.items())
    ]


def construction_records(matrix):
    return [
        {"frame": frame, "construction": construction, "count": count}
        for frame, row in sorted(matrix.items())
        for construction, count in sorted(row.items())
    ]


def role_link_records(frame, link_frequencies):
    return [
        {"frame": frame, "role": role, "path": path, "count": count}
        for role, paths in sorted(link_frequencies.items())
        for path, count in sorted(paths.items())
    ]


def time_lag_records(histogram):
    """One record per (bucket, frame); boundaries are [start, end) in days."""
    records = []
    for start, counts in histogram.buckets:
        for frame, count in sorted(counts.items()):
            records.append(
                {
                    "bucket_start_days": start,
                    "bucket_end_days": start + histogram.bucket_days,
                    "frame": frame,
                    "count": count,
                }
            )
    return records


def time_lag_payload(histogram):
    """The structured form of a histogram, anomaly tallies included."""
    return {
        "bucket_days": histogram.bucket_days,
        "buckets": [
            {
                "start_days": start,
                "end_days": start + histogram.bucket_days,
                "counts": dict(sorted(counts.items())),
            }
            for start, counts in histogram.buckets
        ],
        "negative_lags": histogram.negative_lags,
        "unlinked_documents": histogram.unlinked_documents,
    }


def foregrounding_record(frame, share, total):
    return {"frame": frame, "share": share, "total": total}


def instance_record(instance):
    """Span-level transport record of one FrameInstance."""
    return {
        "instance_id": instance.instance_id,
        "frame": instance.frame,
        "trigger": {"start": instance.trigger.start, "end": instance.trigger.end},
        "roles": [
            {"name": r.name, "start": r.span.start, "end": r.span.end}
            for r in instance.roles
        ],
    }


def sample_records(samples):
    """Flatten sample_sentences output for transport."""
    return [
        {
            "doc_id": match.doc_id,
            "sent_id": match.sent_id,
            "text": match.text,
            "tokens": list(match.tokens),
            "instances": [instance_record(i) for i in match.instances],
        }
        for match in samples
    ]


def annotation_records(analyzed):
    """Line-delimited export records, in corpus instance order."""
    records = []
    for _, instance in analyzed.corpus.iter_instances():
        annotation = analyzed.annotations.get(instance.instance_id)
        if annotation is not None:
            records.append(annotation_to_record(annotation))
    return records


def write_csv(records, stream=None, fieldnames=None):
    """Render records as CSV; returns the text when no stream is given.

    An empty record list still emits a header when fieldnames are supplied.
    """
    own = stream is None
    if own:
        stream = io.StringIO()
    if fieldnames is None:
        if not records:
            return "" if own else None
        fieldnames = list(records[0].keys())
    writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return stream.getvalue() if own else None
