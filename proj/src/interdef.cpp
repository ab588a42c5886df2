#include "selrec/interdef.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "selrec/barrec.hpp"
#include "selrec/spector.hpp"

namespace selrec {

namespace {

using V = Value;
using Rv = Result;
using SeqV = Seq<Value>;

// Ground type for lifting dependent schemes to position-indexed ones: the
// next value as a function of the decoded history.
using PathFn = std::function<V(const Path<V>&)>;

// Instantiate a sequence of history readers along its own decoded prefix,
// starting from s.
SeqV course_decode(Path<V> s, Seq<PathFn> d) {
  return Seq<V>::self_ref([s, d](long i, const Seq<V>& self) {
    Path<V> t = s;
    for (long j = 0; j < i; ++j) t.push_back(self.at(j));
    return d.at(i)(t);
  });
}

// The lifted selection family shared by eps_dep_via_eps and ips_dep_via_ips:
// position-independent; the dependent family is consulted at decode time.
// Readers are pure in the history, and enclosing probes instantiate the same
// reader at the same history over and over, so each one carries a cache.
struct ReaderCache {
  std::mutex mu;
  std::vector<std::pair<Path<V>, V>> hits;
};

PosFamily<Selection<PathFn, Rv>> lift_path_family(
    PathFamily<V, Selection<V, Rv>> sel) {
  return [sel](long) {
    return Selection<PathFn, Rv>([sel](const Predicate<PathFn, Rv>& big) {
      auto cache = std::make_shared<ReaderCache>();
      return PathFn([sel, big, cache](const Path<V>& t) {
        {
          std::lock_guard<std::mutex> lock(cache->mu);
          for (const auto& e : cache->hits)
            if (e.first == t) return e.second;
        }
        V out = sel(t)([big](const V& y) {
          return big(PathFn([y](const Path<V>&) { return y; }));
        });
        std::lock_guard<std::mutex> lock(cache->mu);
        cache->hits.emplace_back(t, out);
        return out;
      });
    });
  };
}

long max_length_over(const LengthFn<Rv>& len, int r_card) {
  long m = 0;
  for (int rc = 0; rc < r_card; ++rc) m = std::max(m, len(Rv{rc}));
  return m;
}

}  // namespace

Seq<Value> eps_via_epq(long n, PosFamily<Selection<V, Rv>> sel, LengthFn<Rv> len,
                       Outcome<V, Rv> q, FuelHandle fuel) {
  // Inner result type: whole sequences. The quantifier at i scores candidates
  // through the outer outcome shifted back to the start position, then
  // commits to the continuation the chosen candidate induces.
  PosFamily<Quantifier<V, SeqV>> quant = [sel, q, n](long i) {
    return Quantifier<V, SeqV>([sel, q, n, i](const Predicate<V, SeqV>& p) {
      V c = sel(i)([p, q, n](const V& x) { return q.eval(shift(p(x), n)); });
      return p(c);
    });
  };
  LengthFn<SeqV> len2 = [len, q, n](const SeqV& r) { return len(q.eval(shift(r, n))); };
  Outcome<V, SeqV> zeros_then{
      [n](const Seq<V>& beta) { return prepend(Path<V>(static_cast<size_t>(n), V{0}), beta); },
      std::nullopt};
  SeqV out = epq<V, SeqV>(n, quant, len2, zeros_then, V{0}, fuel);
  return shift(out, n);
}

Seq<Value> eps_dep_via_eps(Path<V> s, PathFamily<V, Selection<V, Rv>> sel,
                           LengthFn<Rv> len, Outcome<V, Rv> q, FuelHandle fuel) {
  Outcome<PathFn, Rv> q2{
      [q, s](const Seq<PathFn>& d) { return q.eval(course_decode(s, d)); },
      q.modulus};
  PathFn zero_fn = [](const Path<V>&) { return V{0}; };
  Seq<PathFn> out = eps<PathFn, Rv>(static_cast<long>(s.size()), lift_path_family(sel),
                                    len, q2, zero_fn, fuel);
  return course_decode(s, out);
}

Result epq_dep_via_br(Path<V> s, PathFamily<V, Quantifier<V, Rv>> quant,
                      LengthFn<Rv> len, Outcome<V, Rv> q, int r_card,
                      FuelHandle fuel) {
  long k = static_cast<long>(s.size());
  Outcome<V, Rv> q_abs{[q, k](const Seq<V>& a) { return q.eval(shift(a, k)); },
                       q.modulus ? std::optional<long>(*q.modulus + k) : std::nullopt};
  OmegaFn<V> w;
  w.raw = [len, q_abs](const Seq<V>& a) { return len(q_abs.eval(a)); };
  w.modulus = (q.modulus ? *q.modulus : 0) + k;
  w.bound = max_length_over(len, r_card);
  return br<V, Rv>(s, quant, w, q_abs, V{0}, fuel);
}

Seq<Value> sbr_via_eps_dep(Path<V> s, PathFamily<V, Selection<V, SeqV>> sel,
                           OmegaFn<V> omega, FuelHandle fuel) {
  // Pair each sequence with its stopping value; the pair's second component
  // is the length, the first is what selections get to see.
  using RN = std::pair<SeqV, long>;
  PathFamily<V, Selection<V, RN>> sel2 = [sel](const Path<V>& t) {
    return Selection<V, RN>([sel, t](const Predicate<V, RN>& p) {
      return sel(t)([p](const V& x) { return p(x).first; });
    });
  };
  LengthFn<RN> len2 = [](const RN& r) { return r.second; };
  Outcome<V, RN> q2{[omega, s](const Seq<V>& beta) {
                      SeqV full = prepend(s, beta);
                      return RN{full, omega.eval(full)};
                    },
                    std::nullopt};
  Seq<V> out = eps_dep<V, RN>(s, sel2, len2, q2, V{0}, fuel);
  return prepend(s, out);
}

Seq<Value> ips_dep_via_ips(Path<V> s, PathFamily<V, Selection<V, Rv>> sel,
                           Outcome<V, Rv> q, FuelHandle fuel) {
  Outcome<PathFn, Rv> q2{
      [q, s](const Seq<PathFn>& d) { return q.eval(course_decode(s, d)); },
      q.modulus};
  Seq<PathFn> out = ips<PathFn, Rv>(static_cast<long>(s.size()), lift_path_family(sel),
                                    q2, fuel);
  return course_decode(s, out);
}

namespace {

// Ground type for lifting the dependent skewed product: a flag plus a tail
// emitter reading the decoded history.
struct FlaggedTail {
  bool present = false;
  std::function<SeqV(const Path<V>&)> emit;
};

// Decoding: position i is served by the greatest marked row at or below i,
// instantiated on the decoded prefix up to that row; all-unmarked prefixes
// decode to zero.
SeqV flagged_decode(Path<V> s, Seq<FlaggedTail> a) {
  return Seq<V>::self_ref([s, a](long i, const Seq<V>& self) -> V {
    long n = -1;
    for (long k = i; k >= 0; --k) {
      if (a.at(k).present) {
        n = k;
        break;
      }
    }
    if (n < 0) return V{0};
    Path<V> t = s;
    for (long j = 0; j < n; ++j) t.push_back(self.at(j));
    return a.at(n).emit(t).at(i - n);
  });
}

PosFamily<SkewedSelection<FlaggedTail, Rv>> lift_skewed_family(
    PathFamily<V, SkewedSelection<V, Rv>> sel) {
  return [sel](long) {
    return SkewedSelection<FlaggedTail, Rv>([sel](const Predicate<FlaggedTail, Rv>& big) {
      FlaggedTail head;
      head.present = true;
      head.emit = [sel, big](const Path<V>& t) {
        return sel(t)([big](const V& x) {
          FlaggedTail injected;
          injected.present = true;
          injected.emit = [x](const Path<V>&) { return cons(x, zero_seq()); };
          return big(injected);
        });
      };
      FlaggedTail rest{false, [](const Path<V>&) { return zero_seq(); }};
      return cons(head, Seq<FlaggedTail>::constant(rest));
    });
  };
}

}  // namespace

Seq<Value> mbr_dep_via_mbr(Path<V> s, PathFamily<V, SkewedSelection<V, Rv>> sel,
                           Outcome<V, Rv> q, FuelHandle fuel) {
  Outcome<FlaggedTail, Rv> q2{
      [q, s](const Seq<FlaggedTail>& a) { return q.eval(flagged_decode(s, a)); },
      q.modulus};
  Seq<FlaggedTail> out = mbr<FlaggedTail, Rv>(static_cast<long>(s.size()),
                                              lift_skewed_family(sel), q2, fuel);
  return flagged_decode(s, out);
}

Seq<Value> mbr_prefix_via_mbr_dep(Path<V> s, PathFamily<V, SkewedSelection<V, Rv>> sel,
                                  Outcome<V, Rv> q_full, FuelHandle fuel) {
  return prepend(s, mbr_dep<V, Rv>(s, sel, restrict_outcome(q_full, s), fuel));
}

Seq<Value> mbr_dep_via_mbr_prefix(Path<V> s, PathFamily<V, SkewedSelection<V, Rv>> sel,
                                  Outcome<V, Rv> q, FuelHandle fuel) {
  PathFamily<V, SkewedSelection<V, Rv>> rebased = [sel, s](const Path<V>& t) {
    return sel(concat(s, t));
  };
  return mbr_prefix<V, Rv>(Path<V>{}, rebased, q, fuel);
}

namespace {

// Row cells for mbr_via_ips: a value plus a flag telling injected singleton
// rows apart from rows a selection chose outright.
struct FlagV {
  bool injected = true;
  V v{};
};

using Row = Seq<FlagV>;

Row inject_row(V x) {
  return Row::from_fn([x](long j) { return FlagV{true, j == 0 ? x : V{0}}; });
}

// Row heads feed positions one by one until the first non-injected row,
// which then serves every later position from its own entries.
SeqV matrix_flatten(Seq<Row> m) {
  return Seq<V>::from_fn([m](long j) -> V {
    for (long k = 0; k < j; ++k) {
      if (!m.at(k).at(0).injected) return m.at(k).at(j - k).v;
    }
    return m.at(j).at(0).v;
  });
}

}  // namespace

Seq<Value> mbr_via_ips(long n, PosFamily<SkewedSelection<V, Rv>> sel,
                       Outcome<V, Rv> q, FuelHandle fuel) {
  PosFamily<Selection<Row, Rv>> lifted = [sel](long i) {
    return Selection<Row, Rv>([sel, i](const Predicate<Row, Rv>& f) {
      SeqV sigma = sel(i)([f](const V& x) { return f(inject_row(x)); });
      return map_seq(sigma, [](const V& v) { return FlagV{false, v}; });
    });
  };
  Outcome<Row, Rv> q2{[q](const Seq<Row>& m) { return q.eval(matrix_flatten(m)); },
                      q.modulus};
  Seq<Row> out = ips<Row, Rv>(n, lifted, q2, fuel);
  return map_seq(out.at(0), [](const FlagV& c) { return c.v; });
}

namespace {

using Chunk = Path<V>;  // nonempty

SeqV chunk_flatten(Seq<Chunk> a) {
  return Seq<V>::from_fn([a](long i) -> V {
    long row = 0;
    long off = i;
    for (;;) {
      const Chunk c = a.at(row);
      if (off < static_cast<long>(c.size())) return c[static_cast<size_t>(off)];
      off -= static_cast<long>(c.size());
      ++row;
    }
  });
}

Path<V> chunk_path_flatten(const Path<Chunk>& t) {
  Path<V> out;
  for (const auto& c : t) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Path<Chunk> to_singleton_chunks(const Path<V>& s) {
  Path<Chunk> out;
  for (const auto& v : s) out.push_back(Chunk{v});
  return out;
}

}  // namespace

Seq<Value> ips_dep_via_mbr_dep(Path<V> s, PathFamily<V, Selection<V, Rv>> sel,
                               Outcome<V, Rv> q, FuelHandle fuel) {
  // Every chunk the skewed family emits is a singleton, chosen by the
  // original selection at the fully flattened history; predicates see the
  // flattened own-output prefix extended by the candidate, as one chunk.
  PathFamily<Chunk, SkewedSelection<Chunk, Rv>> nu = [sel](const Path<Chunk>& r) {
    return SkewedSelection<Chunk, Rv>([sel, r](const Predicate<Chunk, Rv>& big) {
      Path<V> base = chunk_path_flatten(r);
      return Seq<Chunk>::self_ref([sel, big, base](long i, const Seq<Chunk>& self) {
        Path<V> flat;
        for (long j = 0; j < i; ++j) {
          Chunk cj = self.at(j);
          flat.insert(flat.end(), cj.begin(), cj.end());
        }
        V x = sel(concat(base, flat))([big, flat](const V& y) {
          return big(extend(flat, y));
        });
        return Chunk{x};
      });
    });
  };
  Outcome<Chunk, Rv> q2{[q](const Seq<Chunk>& a) { return q.eval(chunk_flatten(a)); },
                        q.modulus};
  Seq<Chunk> out = mbr_dep<Chunk, Rv>(to_singleton_chunks(s), nu, q2, fuel);
  return chunk_flatten(out);
}

namespace {

// Cell for epq_dep_via_ips_dep: a ground value or an already-decided result.
struct TaggedV {
  bool is_result = false;
  V v{};
  Rv r{};
};

V check_tag(const TaggedV& t) { return t.is_result ? V{0} : t.v; }

}  // namespace

Result epq_dep_via_ips_dep(Path<V> s, PathFamily<V, Quantifier<V, Rv>> quant,
                           LengthFn<Rv> len, Outcome<V, Rv> q, int r_card,
                           FuelHandle fuel) {
  long k = static_cast<long>(s.size());
  long lmax = max_length_over(len, r_card);

  // Selections that always answer with a decided result: the quantifier is
  // consulted at the tag-stripped path.
  PathFamily<TaggedV, Selection<TaggedV, Rv>> lifted =
      [quant](const Path<TaggedV>& t) {
        return Selection<TaggedV, Rv>([quant, t](const Predicate<TaggedV, Rv>& big) {
          Path<V> checked;
          for (const auto& c : t) checked.push_back(check_tag(c));
          Rv r = quant(checked)([big](const V& x) {
            return big(TaggedV{false, x, Rv{}});
          });
          return TaggedV{true, V{}, r};
        });
      };

  OmegaFn<V> w;
  w.raw = [len, q](const Seq<V>& b) { return len(q.eval(b)); };
  w.modulus = q.modulus ? *q.modulus : 0;
  w.bound = lmax;

  // Outcome of a tagged run: search for the offset stopping point of the
  // tag-stripped sequence; a decided result below it wins, otherwise the
  // original outcome of the zero-extended stripped prefix.
  Outcome<TaggedV, Rv> qls;
  qls.eval = [q, w, k](const Seq<TaggedV>& a) -> Rv {
    SeqV checked = map_seq(a, check_tag);
    long n = chi_plus<V>(k, w, checked, V{0});
    for (long i = 0; i < n; ++i) {
      TaggedV c = a.at(i);
      if (c.is_result) return c.r;
    }
    return q.eval(init_seg_zero(checked, n, V{0}));
  };
  qls.modulus = std::nullopt;

  Path<TaggedV> s2;
  for (const auto& v : s) s2.push_back(TaggedV{false, v, Rv{}});
  Seq<TaggedV> out = ips_dep<TaggedV, Rv>(s2, lifted, qls, fuel);
  return qls.eval(out);
}

}  // namespace selrec
