// Python bindings for the main operations: complexes, homology, the two
// invariants, presentations, cocycle verification and the reconstruction
// round trips. Arbitrary-precision results cross the boundary as genuine
// Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "statesum/cech.hpp"
#include "statesum/errors.hpp"
#include "statesum/finite_group.hpp"
#include "statesum/holonomy.hpp"
#include "statesum/homology.hpp"
#include "statesum/homs.hpp"
#include "statesum/json_io.hpp"
#include "statesum/labelings.hpp"
#include "statesum/presentation.hpp"
#include "statesum/simplicial_complex.hpp"

namespace py = pybind11;
using namespace statesum;

namespace {

std::string to_string(const Int& n) {
    std::ostringstream out;
    out << n;
    return out.str();
}

py::object py_int(const Int& n) {
    return py::module_::import("builtins").attr("int")(to_string(n));
}

py::object py_rational(const Rational& q) {
    auto fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(py_int(numerator(q)), py_int(denominator(q)));
}

GroupPtr make_group(const std::string& spec) {
    return std::make_shared<const FiniteGroup>(group_from_spec(spec));
}

py::dict homology_dict(const FinAbelianGroup& h) {
    py::dict d;
    d["free_rank"] = h.free_rank();
    py::list torsion;
    for (const Int& f : h.factors()) torsion.append(py_int(f));
    d["torsion"] = torsion;
    d["describe"] = h.describe();
    return d;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["ok"] = v.ok;
    py::list viols;
    for (const Simplex& s : v.violations) viols.append(s);
    d["violations"] = viols;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "state-sum invariants and discrete holonomy on triangulated spaces";

    py::register_exception<MalformedInputError>(m, "MalformedInputError", PyExc_ValueError);
    py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<NoSolutionError>(m, "NoSolutionError", PyExc_ValueError);

    py::class_<SimplicialComplex, std::shared_ptr<SimplicialComplex>>(m, "Complex")
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("euler_characteristic",
             [](const SimplicialComplex& k) { return py_int(k.euler_characteristic()); })
        .def("simplices",
             [](const SimplicialComplex& k, int d) {
                 if (d < 0 || d > k.dimension()) return std::vector<Simplex>{};
                 return k.simplices(d);
             })
        .def("is_connected", &SimplicialComplex::is_connected)
        .def("__repr__", [](const SimplicialComplex& k) {
            std::ostringstream out;
            out << "Complex(dim=" << k.dimension() << ", vertices=" << k.vertex_count() << ")";
            return out.str();
        });

    m.def("build_complex",
          [](const std::vector<std::vector<Vertex>>& maximal) {
              return std::make_shared<SimplicialComplex>(build_complex(maximal));
          },
          py::arg("maximal_simplices"),
          "Close the given maximal simplices under faces.");

    m.def("fixture_names", [] {
        std::vector<std::string> names;
        for (const FixtureInfo& f : fixture_registry()) names.push_back(f.name);
        return names;
    });

    m.def("fixture",
          [](const std::string& name) {
              return std::const_pointer_cast<SimplicialComplex>(fixture_complex(name));
          },
          py::arg("name"), "One of the shipped complexes.");

    m.def("homology",
          [](std::shared_ptr<SimplicialComplex> k, int d) { return homology_dict(homology(*k, d)); },
          py::arg("complex"), py::arg("dim"));

    m.def("dw_invariant",
          [](std::shared_ptr<SimplicialComplex> k, const std::string& spec, int threads) {
              return py_int(dw_invariant(*k, make_group(spec), threads));
          },
          py::arg("complex"), py::arg("group"), py::arg("threads") = 0,
          "Number of homomorphisms from the fundamental group into the group.");

    m.def("yetter_invariant",
          [](std::shared_ptr<SimplicialComplex> k, const std::string& spec) {
              CoeffGroup cg = parse_coeff_spec(spec);
              if (!cg.is_finite())
                  throw UnsupportedError("yetter_invariant needs a finite abelian group");
              std::vector<Int> factors(cg.moduli().begin(), cg.moduli().end());
              YetterResult r = yetter_invariant(*k, FinAbelianGroup::from_factors(factors));
              py::dict d;
              d["invariant"] = py_int(r.invariant);
              d["verified_simply_connected"] = r.verified_simply_connected;
              d["warning"] = r.warning;
              d["h2"] = r.h2.describe();
              return d;
          },
          py::arg("complex"), py::arg("group"));

    m.def("pi1",
          [](std::shared_ptr<SimplicialComplex> k, Vertex basepoint, int simplify_effort) {
              Presentation p = present_pi1(k, basepoint);
              if (simplify_effort > 0) p = simplify_presentation(std::move(p), simplify_effort);
              py::dict d;
              d["generators"] = p.generators;
              d["relators"] = p.relators;
              d["abelianization"] = abelianization(p).describe();
              SimplyConnectedCheck sc = check_simply_connected(p);
              d["simply_connected_verified"] = sc.verified;
              d["simply_connected_reason"] = sc.reason;
              return d;
          },
          py::arg("complex"), py::arg("basepoint") = 0, py::arg("simplify_effort") = 0);

    m.def("count_homs",
          [](std::shared_ptr<SimplicialComplex> k, const std::string& spec, int threads) {
              return py_int(dw_invariant(*k, make_group(spec), threads));
          },
          py::arg("complex"), py::arg("group"), py::arg("threads") = 0);

    m.def("verify_labeled",
          [](const std::string& text) {
              LabeledFile f = labeled_from_json(json::parse(text, nullptr, true));
              Verdict v;
              if (f.edge)
                  v = verify_bundle_cocycle(*f.edge);
              else if (f.triangle)
                  v = verify_gerbe_cocycle(*f.triangle);
              else if (f.abelian_edge)
                  v = verify_abelian_bundle_cocycle(*f.abelian_edge);
              else
                  throw MalformedInputError("kind '" + f.kind + "' has no cocycle law");
              py::dict d = verdict_dict(v);
              d["kind"] = f.kind;
              return d;
          },
          py::arg("labeled_json"),
          "Verify the cocycle law of a labeled file given as a JSON string.");

    m.def("characteristic_class",
          [](const std::string& text) {
              LabeledFile f = labeled_from_json(json::parse(text, nullptr, true));
              CohomologyClass c;
              if (f.triangle) {
                  Verdict v = verify_gerbe_cocycle(*f.triangle);
                  if (!v.ok) throw PreconditionError("not a gerbe cocycle");
                  c = characteristic_class(*f.triangle);
              } else if (f.abelian_edge) {
                  Verdict v = verify_abelian_bundle_cocycle(*f.abelian_edge);
                  if (!v.ok) throw PreconditionError("not an abelian bundle cocycle");
                  c = characteristic_class_bundle(*f.abelian_edge);
              } else {
                  throw MalformedInputError("kind '" + f.kind + "' has no characteristic class");
              }
              py::dict d;
              d["degree"] = c.degree;
              d["group"] = c.group.describe();
              py::list coords;
              for (const Int& x : c.coords) coords.append(py_int(x));
              d["coords"] = coords;
              d["zero"] = c.is_zero();
              return d;
          },
          py::arg("labeled_json"));

    m.def("holonomy_roundtrip",
          [](std::shared_ptr<SimplicialComplex> k, const std::string& spec) {
              GroupPtr g = make_group(spec);
              Presentation p = present_pi1(k, 0);
              auto homs = enumerate_homs(p, g, EnumMode::kCollect).homs;
              py::list images;
              for (const GroupHom& phi : homs) {
                  EdgeLabeling a = hom_to_connection(p, phi);
                  if (!is_flat(a).ok) throw PreconditionError("reconstructed connection not flat");
                  if (!(holonomy_hom(a, p).images == phi.images))
                      throw PreconditionError("holonomy did not recover the hom");
                  images.append(phi.images);
              }
              return images;
          },
          py::arg("complex"), py::arg("group"),
          "Enumerate all homs, reconstruct a flat connection for each, and "
          "return the images after the holonomy round trip succeeds.");

    m.def("gerbe_roundtrip",
          [](std::shared_ptr<SimplicialComplex> k, const std::string& spec) {
              CoeffGroup cg = parse_coeff_spec(spec);
              if (!cg.is_finite()) throw UnsupportedError("needs a finite coefficient group");
              ChainQuotient h2 = homology_quotient(*k, 2);
              auto elements = cg.elements();
              std::vector<AbelianHom> psis;
              std::vector<std::size_t> pick(h2.torsion_count() + h2.free_count(), 0);
              while (true) {
                  AbelianHom psi;
                  psi.source = h2.group();
                  psi.target = cg;
                  bool valid = true;
                  for (std::size_t i = 0; i < h2.torsion_count(); ++i) {
                      const AbValue& v = elements[pick[i]];
                      if (!cg.is_zero(cg.scale(h2.group().factors()[i], v))) valid = false;
                      psi.torsion_images.push_back(v);
                  }
                  for (std::size_t i = 0; i < h2.free_count(); ++i)
                      psi.free_images.push_back(elements[pick[h2.torsion_count() + i]]);
                  if (valid) psis.push_back(std::move(psi));
                  std::size_t j = pick.size();
                  while (j > 0 && pick[j - 1] + 1 == elements.size()) pick[--j] = 0;
                  if (j == 0) break;
                  ++pick[j - 1];
              }
              int count = 0;
              for (const AbelianHom& psi : psis) {
                  TriangleLabeling b = hom_to_gerbe_connection(k, psi, h2);
                  if (!is_gerbe_flat(b).ok)
                      throw PreconditionError("reconstructed gerbe-connection not flat");
                  if (!(gerbe_holonomy_hom(b, h2) == psi))
                      throw PreconditionError("gerbe holonomy did not recover the hom");
                  ++count;
              }
              return count;
          },
          py::arg("complex"), py::arg("group"),
          "Round trip every hom from H2 into the finite coefficient group; "
          "returns how many were reconstructed and recovered.");

    m.def("two_cycle_holonomy",
          [](const std::string& labeled_text, const std::string& cycle_text) {
              LabeledFile f = labeled_from_json(json::parse(labeled_text, nullptr, true));
              if (!f.triangle) throw MalformedInputError("needs a gerbe-connection file");
              TwoCycle z = twocycle_from_json(json::parse(cycle_text, nullptr, true));
              AbValue h = two_cycle_holonomy(*f.triangle, z);
              py::list out;
              for (const Rational& q : h) out.append(py_rational(q));
              return out;
          },
          py::arg("labeled_json"), py::arg("cycle_json"));
}
