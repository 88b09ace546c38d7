// Optimal covers of residual trees, one block per leaf composition
// <lA lB lC lAB>.  Leaf classes: A, B, C (clean), X (tagged AB).
//
// Row:   predicate | label | recipe | cost
// Group: predicate alone; its indented rows are tried in order and, when
//        none fires, evaluation continues after the group.
//
// Predicates: fullyco, fullysep, solo, else, noniso(S), iso(S), co(S,S),
// sep(S,S), shortlink(S,S), mate(S,tag,S), pruned(P), with ! & | ( ).
// S is a union of classes, e.g. AC.
//
// Recipe slots: s(K) short path on a leaf, t(K,K) traversal, in(K) = t(K,K),
// out(K,L) = t(K,L), semi(K,tag) leaf to any node with the tag, cut = short
// path on any bad node, n*slot repeats.  K* may reuse an already used leaf.
// reduce(K) tries every in-traversal of K and solves what is left; the cost
// column then reads +k.

namespace invindel {

extern const char* const kResidualTables = R"TABLES(
<1100>
  else | I | out(A,B) | 2

<2100>
  fullyco | S | s(B), in(A) | 2
  mate(B,b,A) | M | in(A), semi(B,b) | 2
  else | W | in(A), out(B,A*) | 3

<2200>
  fullyco | I | in(A), in(B) | 2
  shortlink(A,B) | S | in(A), in(B), cut | 3
  mate(A,a,B) | Ma | in(A), in(B), semi(A*,a) | 3
  mate(B,b,A) | Mb | in(A), in(B), semi(B*,b) | 3
  else | W | 2*out(A,B) | 4

<1010>
  else | I | out(A,C) | 2

<1020>
  solo | S | s(C), out(C,A) | 3
  fullyco | Sa | s(A), in(C) | 3
  mate(A,a,C) | M | in(C), semi(A,a) | 3
  else | W | out(C,A), out(C,A*) | 4

<2010>
  fullyco | S | s(C), in(A) | 2
  else | W | out(C,A), t(A,A*) | 3

<2020>
  fullyco | I | in(C), in(A) | 3
  else | W | 2*out(C,A) | 4

<0011>
  else | I | out(C,X) | 2

<0012>
  fullyco | S | s(C), in(X) | 2
  else | W | out(C,X), t(X,X*) | 3

<0021>
  solo | S | s(C), out(C,X) | 3
  fullyco | Sa | s(X), in(C) | 3
  mate(X,a,C) | Ma | in(C), semi(X,a) | 3
  mate(X,b,C) | Mb | in(C), semi(X,b) | 3
  else | W | out(C,X), out(C,X*) | 4

<0022>
  fullyco | I | in(C), in(X) | 3
  else | W | 2*out(C,X) | 4

<1110>
  noniso(C) | S | s(C), out(A,B) | 3
  noniso(A) | Sa | s(A), out(B,C) | 3
  noniso(B) | Sb | s(B), out(A,C) | 3
  sep(B,C) & mate(A,a,BC) | Ma | out(B,C), semi(A,a) | 3
  sep(A,C) & mate(B,b,AC) | Mb | out(A,C), semi(B,b) | 3
  else | W | out(A,C), out(B,C*) | 4

<1120>
  else | I | out(A,C), out(C,B) | 4

<1130>
  solo & iso(A) & iso(B) & !(sep(B,C) & mate(A,a,BC)) & !(sep(A,C) & mate(B,b,AC)) | S | s(C), out(A,C), out(B,C) | 5
  else | >> | reduce(C) | +2

<2110>
  noniso(A) | I | in(A), out(B,C) | 3
  noniso(C) & mate(B,b,A) | SM | s(C), in(A), semi(B,b) | 3
  else | W | out(B,A), out(A,C) | 4

<2120>
  fullyco | Sb | s(B), in(C), in(A) | 4
  pruned(noniso(A)) | S | s(C), out(C,B), in(A) | 4
  noniso(A) & iso(C) & mate(B,b,C) | M | in(A), in(C), semi(B,b) | 4
  noniso(A) & co(A,C) & sep(AC,B) & mate(B,b,AC) | M | in(A), in(C), semi(B,b) | 4
  iso(A) & noniso(C) & mate(B,b,A) | M | in(A), in(C), semi(B,b) | 4
  else | W | in(A), out(B,C), t(C,A*) | 5

<2210>
  fullyco | S | s(C), in(A), in(B) | 3
  noniso(A) | Ia | in(A), in(B), out(C,B*) | 4
  noniso(B) | Ib | in(A), in(B), out(C,A*) | 4
  mate(A,a,B) | Ma | in(B), out(A,C), semi(A,a) | 4
  mate(B,b,A) | Mb | in(A), out(B,C), semi(B,b) | 4
  else | W | in(A), out(B,C), t(B,A*) | 5

<2220>
  fullyco | I | in(A), in(B), in(C) | 4
  noniso(A) | IIa | in(A), 2*out(B,C) | 5
  noniso(B) | IIb | in(B), 2*out(A,C) | 5
  noniso(C)
    mate(A,a,B) | Ma | in(C), in(B), in(A), semi(A*,a) | 5
    mate(B,b,A) | Mb | in(C), in(A), in(B), semi(B*,b) | 5
  fullysep
    mate(A,a,B) & solo | SMa | s(C), out(C,A), in(B), semi(A,a) | 5
    mate(A,a,B) & mate(A,a,C) | MMa | in(C), in(B), 2*semi(A,a) | 5
    mate(B,b,A) & solo | SMb | s(C), out(C,B), in(A), semi(B,b) | 5
    mate(B,b,A) & mate(B,b,C) | MMb | in(C), in(A), 2*semi(B,b) | 5
  else | W | out(A,B), out(B,C), out(C,A) | 6

<1101>
  else | I | out(A,X), out(B,X*) | 2

<1102>
  else | I | out(A,X), out(X,B) | 2

<2101>
  noniso(A) | I | in(A), out(X,B) | 2
  else | W | out(X,A), out(A,B) | 3

<2102>
  else | I | 2*out(A,X), out(B,X*) | 3

<2103>
  iso(A) | nR | out(B,X), 2*out(A,X) | 3
  else | >> | reduce(X) | +1

<2201>
  noniso(A) | Ia | in(A), out(B,X), out(B,X*) | 3
  noniso(B) | Ib | in(B), out(A,X), out(A,X*) | 3
  mate(A,a,B) | Ma | out(A,X), in(B), semi(A,a) | 3
  mate(B,b,A) | Mb | out(B,X), in(A), semi(B,b) | 3
  else | W | out(A,X), out(A,B), out(B,X*) | 4

<2202>
  noniso(A) | Ia | in(A), 2*out(B,X) | 3
  noniso(B) | Ib | in(B), 2*out(A,X) | 3
  else | W | out(A,X), out(X,B), out(B,A) | 4

<2203>
  iso(A) & iso(B) & !mate(A,a,B) & !mate(B,b,A) | nR | 2*out(A,X), out(B,X), out(B,X*) | 4
  else | >> | reduce(X) | +1

<2204>
  iso(A) & iso(B) | nR | 2*out(A,X), 2*out(B,X) | 4
  else | >> | reduce(X) | +1

<1011>
  noniso(C) | S | s(C), out(A,X) | 2
  else | W | out(X,A), out(C,A*) | 3

<1012>
  else | I | out(A,X), out(X,C) | 3

<1021>
  noniso(C) | I | out(A,X), in(C) | 3
  else | W | out(A,C), out(C,X) | 4

<1022>
  noniso(C) | I | in(C), out(A,X), t(X,A*) | 4
  solo | S | s(C), out(C,X), out(X,A) | 4
  mate(X,a,C) | Ma | in(C), out(A,X), semi(X,a) | 4
  mate(X,b,C) | Mb | in(C), out(A,X), semi(X,b) | 4
  else | W | out(A,C), out(C,X), t(X,A*) | 5

<2011>
  else | I | out(C,A), out(A,X) | 3

<2012>
  noniso(C) | S | s(C), 2*out(A,X) | 3
  else | W | 2*out(A,X), out(C,X*) | 4

<2021>
  noniso(C) | I | in(C), out(A,X), out(A,X*) | 4
  solo | S | s(C), out(C,A), out(A,X) | 4
  mate(A,a,C) | Ma | in(C), out(X,A), semi(A,a) | 4
  mate(X,b,C) & noniso(A) | Mb | in(C), in(A), semi(X,b) | 4
  else | W | out(X,C), out(C,A), out(A,X*) | 5

<2022>
  noniso(C) | I | in(C), 2*out(A,X) | 4
  else | W | out(A,X), out(X,C), out(C,A) | 5

<2023>
  iso(A) & iso(C) & mate(X,b,C) & !mate(A,a,C) & !solo | M | in(C), 2*out(A,X), semi(X,b) | 5
  else | >> | reduce(X) | +1

<1111>
  co(AX,BC) | Ia | out(A,X), out(B,C) | 3
  else | Ib | out(B,X), out(A,C) | 3

<1112>
  noniso(C) | S | s(C), out(A,X), out(X,B) | 3
  else | W | out(A,X), out(X,B), out(C,X*) | 4

<1121>
  noniso(C) | I | in(C), out(A,X), out(B,X*) | 4
  sep(A,C) & co(AC,BX)
    solo | S1 | s(C), out(C,A), out(B,X) | 4
    mate(A,a,C) | Ma | in(C), out(B,X), semi(A,a) | 4
  sep(B,C) & co(BC,AX)
    solo | S2 | s(C), out(C,B), out(A,X) | 4
    mate(B,b,C) | Mb | in(C), out(A,X), semi(B,b) | 4
  else | W | out(A,C), out(C,B), t(X,A*) | 5

<1122>
  noniso(C) | I | in(C), out(A,X), out(B,X) | 4
  else | W | out(A,C), out(C,X), out(X,B) | 5

<1123>
  sep(C,A) & iso(AC) & mate(X,a,C) & !mate(B,b,C) | Ma | in(C), out(A,X), out(X,B), semi(X,a) | 5
  sep(C,B) & iso(BC) & mate(X,b,C) & !mate(A,a,C) | Mb | in(C), out(A,X), out(X,B), semi(X,b) | 5
  else | >> | reduce(X) | +1

<2111>
  noniso(C) & noniso(A) & noniso(AC) | S | s(C), in(A), out(X,B) | 3
  else | W | out(C,A), out(A,X), out(B,X*) | 4

<2112>
  else | I | out(A,X), out(B,X), out(A,C) | 4

<2113>
  (iso(A) & noniso(C)) | (co(A,C) & iso(AC)) | S | s(C), 2*out(A,X), out(X,B) | 4
  else | >> | reduce(X) | +1

<2121>
  noniso(C) & noniso(A) & noniso(AC) | I | in(C), in(A), out(X,B) | 4
  else | W | out(X,A), out(A,C), out(C,B) | 5

<2122>
  noniso(C) | I | in(C), 2*out(A,X), out(B,X*) | 5
  solo | S | s(C), out(C,A), out(A,X), out(B,X) | 5
  mate(A,a,C) | Ma | in(C), out(A,X), out(B,X), semi(A,a) | 5
  mate(X,b,C) & noniso(A) | Mb1 | in(C), in(A), out(B,X), semi(X,b) | 5
  mate(B,b,C) & noniso(BC) | Mb2 | in(C), 2*out(A,X), semi(B,b) | 5
  else | W | 2*out(A,X), out(B,C), out(C,A*) | 6

<2123>
  (iso(A) & noniso(C)) | (co(A,C) & iso(AC)) | I | in(C), 2*out(A,X), out(X,B) | 5
  else | >> | reduce(X) | +1

<2124>
  iso(C) & iso(A) & iso(BC) & !solo & !mate(A,a,C) & mate(X,b,C) | M | in(C), 2*out(A,X), out(X,B), semi(X,b) | 6
  else | >> | reduce(X) | +1

<2211>
  noniso(A) | Ia | in(A), out(C,B), out(B,X) | 4
  noniso(B) | Ib | in(B), out(C,A), out(A,X) | 4
  noniso(C)
    mate(A,a,B) | SMa | s(C), out(X,A), in(B), semi(A,a) | 4
    mate(B,b,A) | SMb | s(C), out(X,B), in(A), semi(B,b) | 4
  else | W | out(X,A), out(A,B), out(B,C) | 5

<2212>
  noniso(C)
    noniso(A) & noniso(AC) | S1 | s(C), in(A), 2*out(B,X) | 4
    noniso(B) & noniso(BC) | S2 | s(C), in(B), 2*out(A,X) | 4
  else | W | out(C,A), 2*out(B,X), out(A,X*) | 5

<2213>
  iso(A) & iso(B)
    iso(C) | (noniso(C) & !mate(A,a,B) & !mate(B,b,A)) | nR | 2*out(A,X), out(X,B), out(B,C) | 5
  else | >> | reduce(X) | +1

<2214>
  noniso(C) & (iso(A) | (co(A,C) & iso(AC))) & (iso(B) | (co(B,C) & iso(BC))) | S | s(C), 2*out(A,X), 2*out(B,X) | 5
  else | >> | reduce(X) | +1

<2221>
  pruned(noniso(A)) | S1 | s(C), in(A), out(B,C), out(B,X) | 5
  pruned(noniso(B)) | S2 | s(C), in(B), out(A,C), out(A,X) | 5
  noniso(A)
    noniso(C) & noniso(AC) | Ia | in(A), in(C), out(B,X), out(B,X*) | 5
    mate(B,b,C) | Mb | in(A), in(C), out(B,X), semi(B,b) | 5
  noniso(C)
    mate(B,b,A) | Mb | in(A), in(C), out(B,X), semi(B,b) | 5
    mate(A,a,B) | Ma | in(B), in(C), out(A,X), semi(A,a) | 5
  noniso(B)
    mate(A,a,C) | Ma | in(B), in(C), out(A,X), semi(A,a) | 5
    noniso(C) & noniso(BC) | Ib | in(B), in(C), out(A,X), out(A,X*) | 5
  else | W | out(A,C), out(A,X), out(B,C), out(B,X*) | 6

<2222>
  noniso(C)
    noniso(A) & noniso(AC) | Ia | in(C), in(A), 2*out(B,X) | 5
    noniso(B) & noniso(BC) | Ib | in(C), in(B), 2*out(A,X) | 5
  else | W | out(C,A), out(A,X), out(X,B), out(B,C) | 6

<2223>
  (iso(A) | iso(AC)) & (iso(B) | iso(BC))
    noniso(C) | I | in(C), 2*out(A,X), out(B,X), out(B,X*) | 6
    solo | S | s(C), out(C,A), out(A,X), 2*out(X,B) | 6
  iso(A) & iso(B) & iso(C)
    mate(A,a,C) | Ma | in(C), 2*out(B,X), out(A,X), semi(A,a) | 6
    mate(B,b,C) | Mb | in(C), 2*out(A,X), out(B,X), semi(B,b) | 6
  else | >> | reduce(X) | +1

<2224>
  noniso(C) & (iso(A) | (co(A,C) & iso(AC))) & (iso(B) | (co(B,C) & iso(BC))) | I | in(C), 2*out(A,X), 2*out(B,X) | 6
  else | >> | reduce(X) | +1
)TABLES";

}  // namespace invindel
