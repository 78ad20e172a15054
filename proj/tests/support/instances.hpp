#pragma once

#include "sfdt/embedding.hpp"
#include "sfdt/graph.hpp"

namespace sfdt::instances {

// Plane and torus embeddings used across the embedding/discharge tests.
// Rotations are counterclockwise orders read off explicit drawings.

EmbeddedGraph k4_planar();        // 4 triangles
EmbeddedGraph c5_planar();        // 2 pentagons
EmbeddedGraph p3_path();          // one non-simple face (walk of length 4)
EmbeddedGraph bowtie();           // cut vertex; outer walk revisits it
EmbeddedGraph wheel5();           // hub + 5-rim: 5 triangles + pentagon
EmbeddedGraph cube();             // 6 quadrilaterals
EmbeddedGraph torus_grid(int m, int n);  // C_m x C_n, quadrilaterals, Euler 0

// Two triangles tied to a degree-4 hub by two 2-paths: auxiliary multigraph
// is a single edge (tree); the bank must end at exactly 6/5.
EmbeddedGraph bank_tree7();
// Chain of three triangles through two degree-4 hubs: path-shaped tree.
EmbeddedGraph bank_tree9();
// Ring of four triangles joined at degree-4 hinges: cycle-shaped auxiliary
// multigraph; the bank must end at exactly 0.
EmbeddedGraph necklace4();

// Pentagonal antiprism: 4-regular, 10 triangles + 2 pentagons.
EmbeddedGraph antiprism5();
// Antiprism variants exercising the 5-face rules of the third scheme:
EmbeddedGraph penta_5a();    // inner pentagon beside five 3-faces, one
                             // degree-5 corner: class 5a
EmbeddedGraph penta_sink();  // all-degree-4 pentagon with two degree-5
                             // apexes: related-source transfers
EmbeddedGraph penta_5b();    // one triangle opened into a quad: class 5b
EmbeddedGraph penta_5c();    // two opened, one (4,4)-link kept: class 5c

}  // namespace sfdt::instances
