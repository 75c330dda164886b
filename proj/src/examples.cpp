#include "goeritz/examples.hpp"

#include <map>
#include <stdexcept>

namespace goeritz {

namespace {

// PD records are counterclockwise with slots 0 and 2 on the under-strand.
// torus-2-8 and whitehead are transcribed so that the default shading
// (unbounded face unshaded) matches their standard checkerboards.
const std::map<std::string, std::string>& table() {
    static const std::map<std::string, std::string> m = {
        {"unknot-0x", "# crossing-free unknot\npiece U { O }\n"},
        {"unknot-1x", "# unknot with a single kink\npiece U { X 1 1 2 2 }\n"},
        {"unlink-2", "piece A { O }\npiece B { O }\n"},
        {"unlink-3", "piece A { O }\npiece B { O }\npiece C { O }\n"},
        {"unlink-4", "piece A { O }\npiece B { O }\npiece C { O }\npiece D { O }\n"},
        {"unlink-2-nested",
         "piece A { O }\npiece B { O }\nplace B in A.face(1)\n"},
        {"unlink-3-nested",
         "piece A { O }\npiece B { O }\npiece C { O }\n"
         "place B in A.face(1)\nplace C in B.face(1)\n"},
        {"unlink-4-nested",
         "piece A { O }\npiece B { O }\npiece C { O }\npiece D { O }\n"
         "place B in A.face(1)\nplace C in B.face(1)\nplace D in C.face(1)\n"},
        {"trefoil", "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\n"},
        {"figure-eight", "piece K { X 8 1 2 5 ; X 5 2 3 6 ; X 1 7 4 3 ; X 6 4 7 8 }\n"},
        {"hopf", "piece L { X 1 4 2 3 ; X 3 2 4 1 }\n"},
        {"torus-2-8",
         "# (2,8) torus link: closed 2-braid with eight crossings\n"
         "piece T { X 8 16 9 1 ; X 1 9 10 2 ; X 2 10 11 3 ; X 3 11 12 4 ;\n"
         "          X 4 12 13 5 ; X 5 13 14 6 ; X 6 14 15 7 ; X 7 15 16 8 }\n"},
        {"whitehead",
         "# Whitehead link: alternating five-crossing diagram\n"
         "piece W { X 1 9 4 3 ; X 10 1 2 6 ; X 6 2 3 7 ; X 7 4 5 8 ; X 8 5 9 10 }\n"},
        {"trefoil-hopf-split",
         "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\n"
         "piece L { X 1 4 2 3 ; X 3 2 4 1 }\n"},
        {"trefoil-nested-in-trefoil",
         "piece K { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\n"
         "piece M { X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3 }\n"
         "place M in K.face(2)\n"},
    };
    return m;
}

}  // namespace

std::vector<std::string> example_names() {
    std::vector<std::string> names;
    for (const auto& [name, src] : table()) names.push_back(name);
    return names;
}

const std::string& example_source(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw std::out_of_range("unknown example: " + name);
    return it->second;
}

bool has_example(const std::string& name) { return table().count(name) > 0; }

}  // namespace goeritz
