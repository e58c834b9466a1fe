// Python bindings for the main operations: block constructors, products,
// the deficiency solver/constructor/certifier, coset enumeration and the
// homology pipelines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupdef/coset_enum.hpp"
#include "groupdef/deficiency.hpp"
#include "groupdef/errors.hpp"
#include "groupdef/homology.hpp"
#include "groupdef/json_io.hpp"
#include "groupdef/presentation.hpp"
#include "groupdef/version.hpp"

namespace py = pybind11;
using namespace groupdef;

namespace {

py::object py_bigint(const mpz_class& v) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(v.get_str());
}

py::list factors_list(const FinAbGroup& g) {
  py::list out;
  for (const mpz_class& f : g.invariant_factors()) out.append(py_bigint(f));
  return out;
}

BlockKind kind_from_string(const std::string& name) {
  if (name == "A" || name == "a") return BlockKind::A;
  if (name == "B" || name == "b") return BlockKind::B;
  if (name == "C" || name == "c") return BlockKind::C;
  throw InvalidArgument("block kind must be one of 'A', 'B', 'C'");
}

CertifyMode mode_from_string(const std::string& name) {
  if (name == "table") return CertifyMode::Table;
  if (name == "kunneth") return CertifyMode::Kunneth;
  throw InvalidArgument("mode must be 'table' or 'kunneth'");
}

EnumerationOptions enum_options(std::size_t max_cosets, const std::string& strategy) {
  EnumerationOptions opts;
  opts.max_cosets = max_cosets;
  if (strategy == "hlt")
    opts.strategy = EnumerationStrategy::Hlt;
  else if (strategy == "felsch")
    opts.strategy = EnumerationStrategy::Felsch;
  else
    throw InvalidArgument("strategy must be 'hlt' or 'felsch'");
  return opts;
}

PresentationFormat format_from_string(const std::string& name) {
  if (name == "text") return PresentationFormat::Text;
  if (name == "json") return PresentationFormat::Json;
  if (name == "gap") return PresentationFormat::Gap;
  throw InvalidArgument("format must be 'text', 'json' or 'gap'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Finite p-groups of prescribed deficiency: presentations, coset "
      "enumeration, Smith normal form homology, certification.";
  m.attr("__version__") = kVersion;

  // Translators run newest-first, so the base class goes in first.
  py::register_exception<Error>(m, "GroupdefError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "GroupdefParseError", PyExc_ValueError);
  py::register_exception<CosetLimitExceeded>(m, "CosetLimitError", PyExc_RuntimeError);
  py::register_exception<OrderCeilingExceeded>(m, "OrderCeilingError", PyExc_RuntimeError);
  py::register_exception<MissingPedigree>(m, "MissingPedigreeError", PyExc_ValueError);

  py::class_<BlockCounts>(m, "BlockCounts")
      .def_readonly("p", &BlockCounts::p)
      .def_readonly("r", &BlockCounts::r)
      .def_readonly("s", &BlockCounts::s)
      .def_readonly("t", &BlockCounts::t)
      .def_readonly("m", &BlockCounts::trace_m)
      .def_readonly("d", &BlockCounts::trace_d)
      .def_property_readonly("label",
                             [](const BlockCounts& bc) { return block_product_label(bc); })
      .def("__repr__", [](const BlockCounts& bc) {
        return "BlockCounts(r=" + std::to_string(bc.r) +
               ", s=" + std::to_string(bc.s) + ", t=" + std::to_string(bc.t) + ")";
      });

  py::class_<FinAbGroup>(m, "FinAbGroup")
      .def_property_readonly("torsion_free_rank", &FinAbGroup::torsion_free_rank)
      .def_property_readonly("invariant_factors", &factors_list)
      .def_property_readonly("is_trivial", &FinAbGroup::is_trivial)
      .def("min_generators", [](const FinAbGroup& g) { return min_generators(g); })
      .def("order", [](const FinAbGroup& g) { return py_bigint(g.order()); })
      .def("__eq__", [](const FinAbGroup& a, const FinAbGroup& b) { return a == b; })
      .def("__str__", &FinAbGroup::to_string)
      .def("__repr__",
           [](const FinAbGroup& g) { return "FinAbGroup(" + g.to_string() + ")"; });

  py::class_<Presentation>(m, "Presentation")
      .def_property_readonly("generators", &Presentation::generator_names)
      .def_property_readonly("generator_count", &Presentation::generator_count)
      .def_property_readonly("relator_count", &Presentation::relator_count)
      .def_property_readonly("deficiency",
                             [](const Presentation& p) { return presentation_deficiency(p); })
      .def_property_readonly("prime",
                             [](const Presentation& p) -> py::object {
                               return p.prime() ? py::cast(*p.prime()) : py::none();
                             })
      .def_property_readonly("pedigree",
                             [](const Presentation& p) -> py::object {
                               return p.pedigree() ? py::cast(*p.pedigree()) : py::none();
                             })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               py::list out;
                               for (const Word& w : p.relators())
                                 out.append(render_word(w, p.generator_names()));
                               return out;
                             })
      .def("render",
           [](const Presentation& p, const std::string& format) {
             return render_presentation(p, format_from_string(format));
           },
           py::arg("format") = "text")
      .def("__eq__", [](const Presentation& a,
                        const Presentation& b) { return structurally_equal(a, b); })
      .def("__str__", [](const Presentation& p) { return render_presentation(p); })
      .def("__repr__", [](const Presentation& p) {
        return "Presentation(" + render_presentation(p) + ")";
      });

  py::class_<GroupTable>(m, "GroupTable")
      .def_readonly("order", &GroupTable::order)
      .def_readonly("identity", &GroupTable::identity)
      .def_readonly("product", &GroupTable::product)
      .def_readonly("inverse", &GroupTable::inverse)
      .def("__repr__", [](const GroupTable& gt) {
        return "GroupTable(order=" + std::to_string(gt.order) + ")";
      });

  py::class_<DeficiencyCertificate>(m, "Certificate")
      .def_readonly("lower_bound", &DeficiencyCertificate::lower_bound)
      .def_property_readonly("upper_bound",
                             [](const DeficiencyCertificate& c) -> py::object {
                               return c.upper_bound ? py::cast(*c.upper_bound) : py::none();
                             })
      .def_property_readonly("certified_value",
                             [](const DeficiencyCertificate& c) -> py::object {
                               return c.certified_value ? py::cast(*c.certified_value)
                                                        : py::none();
                             })
      .def_property_readonly("certified", &DeficiencyCertificate::certified)
      .def_readonly("provenance", &DeficiencyCertificate::provenance)
      .def_readonly("error", &DeficiencyCertificate::error)
      .def("__repr__", [](const DeficiencyCertificate& c) {
        return "Certificate(" + c.to_string() + ")";
      });

  m.def("parse", [](const std::string& text) { return read_presentation(text); },
        py::arg("text"), "Parse a presentation from the text grammar or JSON.");
  m.def("building_block",
        [](const std::string& kind, unsigned long p) {
          return building_block(kind_from_string(kind), p);
        },
        py::arg("kind"), py::arg("p"));
  m.def("direct_product", &direct_product, py::arg("p"), py::arg("q"));
  m.def("power_product", &power_product, py::arg("p"), py::arg("k"));

  m.def("solve", &solve, py::arg("n"),
        "Block counts (r, s, t) whose product has deficiency -n.");
  m.def("construct", &construct, py::arg("p"), py::arg("n"),
        "Presentation of a finite p-group with deficiency exactly -n.");
  m.def("deficiency_of_counts", &deficiency_of_counts, py::arg("counts"));
  m.def("certify",
        [](const Presentation& p, const std::string& mode, std::size_t max_cosets,
           std::size_t h2_ceiling) {
          CertifyOptions opts;
          opts.max_cosets = max_cosets;
          opts.h2_order_ceiling = h2_ceiling;
          return certify(p, mode_from_string(mode), opts);
        },
        py::arg("presentation"), py::arg("mode") = "kunneth",
        py::arg("max_cosets") = kDefaultMaxCosets,
        py::arg("h2_ceiling") = kDefaultH2OrderCeiling);

  m.def("order",
        [](const Presentation& p, std::size_t max_cosets, const std::string& strategy) {
          return order(p, enum_options(max_cosets, strategy));
        },
        py::arg("presentation"), py::arg("max_cosets") = kDefaultMaxCosets,
        py::arg("strategy") = "hlt", "Group order by Todd-Coxeter enumeration.");
  m.def("multiplication_table",
        [](const Presentation& p, std::size_t max_cosets, const std::string& strategy) {
          return multiplication_table(enumerate(p, enum_options(max_cosets, strategy)));
        },
        py::arg("presentation"), py::arg("max_cosets") = kDefaultMaxCosets,
        py::arg("strategy") = "hlt");

  m.def("h1", &h1_from_presentation, py::arg("presentation"),
        "Abelianization H1 from the presentation's exponent matrix.");
  m.def("h1_from_table",
        [](const Presentation& p, std::size_t max_cosets) {
          EnumerationOptions opts;
          opts.max_cosets = max_cosets;
          return h1_from_table(multiplication_table(enumerate(p, opts)));
        },
        py::arg("presentation"), py::arg("max_cosets") = kDefaultMaxCosets);
  m.def("h2_from_table",
        [](const Presentation& p, std::size_t max_cosets, std::size_t ceiling) {
          EnumerationOptions opts;
          opts.max_cosets = max_cosets;
          return h2_from_table(multiplication_table(enumerate(p, opts)), ceiling);
        },
        py::arg("presentation"), py::arg("max_cosets") = kDefaultMaxCosets,
        py::arg("ceiling") = kDefaultH2OrderCeiling,
        "Schur multiplier via the normalized bar resolution.");
  m.def("h2_kunneth", &h2_kunneth, py::arg("h2_g"), py::arg("h2_h"),
        py::arg("h1_g"), py::arg("h1_h"));
  m.def("h2_of_block_product", &h2_of_block_product, py::arg("p"), py::arg("r"),
        py::arg("s"), py::arg("t"));

  m.def("golod_shafarevich_consistent", &golod_shafarevich_consistent,
        py::arg("rank"), py::arg("deficiency"));
  m.def("figure_table",
        [](unsigned long p, long max_n) {
          py::list out;
          for (const FigureRow& row : figure_one_table(p, max_n))
            out.append(py::make_tuple(row.n, row.counts, row.label));
          return out;
        },
        py::arg("p"), py::arg("max_n"));
}
