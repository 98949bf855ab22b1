import threading


class TriangleSink:
    """ The base class for consumers of listed triangles.

    A sink receives every triangle as the dense ids (u, v, w) with
    rank(u) < rank(v) < rank(w). Parallel listing gives each lane its own fork of the
    sink and merges the forks into the original once all lanes are done, so sinks never
    see concurrent calls to emit().
    """
    def emit(self, u, v, w):
        raise NotImplementedError()

    def fork(self):
        """ Return an empty sink of the same kind for a parallel lane. """
        raise NotImplementedError()

    def merge(self, other):
        """ Absorb the triangles of a forked sink. """
        raise NotImplementedError()

    def close(self):
        """ Called once when the listing has finished. """
        pass


class CountingSink(TriangleSink):
    """ Only counts the triangles. """
    def __init__(self):
        self.count = 0

    def emit(self, u, v, w):
        self.count += 1

    def fork(self):
        return CountingSink()

    def merge(self, other):
        self.count += other.count


class CollectingSink(TriangleSink):
    """ Keeps every triangle, in emission order and as a set of unordered triples.

    Args:
        keep_order (bool): Also record the emission order of the triangles.
    """
    def __init__(self, *, keep_order=True):
        self._keep_order = keep_order
        self.emitted = []
        self.triangles = set()
        self.duplicates = 0

    def emit(self, u, v, w):
        key = tuple(sorted((u, v, w)))
        if key in self.triangles:
            self.duplicates += 1
        else:
            self.triangles.add(key)
        if self._keep_order:
            self.emitted.append((u, v, w))

    def fork(self):
        return CollectingSink(keep_order=self._keep_order)

    def merge(self, other):
        self.duplicates += other.duplicates + len(self.triangles & other.triangles)
        self.triangles |= other.triangles
        self.emitted.extend(other.emitted)

    def sorted_triangles(self):
        """ Return the triangles as sorted triples of dense ids, in ascending order. """
        return sorted(self.triangles)

    @property
    def count(self):
        return len(self.triangles)


class TriangleWriter(TriangleSink):
    """ Writes every triangle as a 'u v w' line of original labels, in rank order.

    Forks buffer their lines; merging writes the buffer under a lock.

    Args:
        stream: A text stream.
        labels: The original label of every dense id.
    """
    def __init__(self, stream, labels, *, _buffered=False):
        self._stream = stream
        self._labels = labels.tolist() if hasattr(labels, 'tolist') else list(labels)
        self._buffer = [] if _buffered else None
        self._lock = threading.Lock()
        self.count = 0

    def emit(self, u, v, w):
        labels = self._labels
        line = '{} {} {}\n'.format(labels[u], labels[v], labels[w])
        if self._buffer is not None:
            self._buffer.append(line)
        else:
            self._stream.write(line)
        self.count += 1

    def fork(self):
        return TriangleWriter(self._stream, self._labels, _buffered=True)

    def merge(self, other):
        with self._lock:
            self._stream.writelines(other._buffer or [])
            self.count += other.count

    def close(self):
        self._stream.flush()
