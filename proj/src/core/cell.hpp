// Small 2D cell complexes: directed edges between vertices, faces as closed
// walks of signed edges. Combinatorics only; no Hilbert space here.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qdm::cell {

struct Edge {
  int tail = 0;
  int head = 0;
};

// One step of a face boundary walk: edge index + traversal sign
// (+1 along the edge orientation, -1 against it).
struct FaceStep {
  int edge = 0;
  int sign = +1;
};

using Face = std::vector<FaceStep>;

enum class Incidence { In, Out, Loop };

struct StarEntry {
  int edge;
  Incidence inc;
};

struct Violation {
  std::string code;    // "EdgeFaceCount" | "OpenFaceWalk" | "IndexRange"
  std::string detail;
};

struct Complex2 {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  int euler_characteristic() const {
    return vertex_count - (int)edges.size() + (int)faces.size();
  }
};

// r x c torus grid. Vertices row-major; the rc horizontal edges come first
// (edge (i,j): (i,j) -> (i,j+1 mod c)), then the rc vertical ones
// ((i,j) -> (i+1 mod r, j)). Each face is a 4-step closed walk with two +1
// and two -1 signs. r = c = 1 produces two self-loops and one face.
Complex2 torus_grid(int rows, int cols);

// Index-shifted concatenation; parts stay disconnected.
Complex2 disjoint_union(const Complex2& a, const Complex2& b);

// Disjoint union with vertex va of `a` identified with vertex vb of `b`.
// The merged vertex keeps index va; remaining b-vertices follow a's block.
Complex2 wedge_at_vertex(const Complex2& a, const Complex2& b, int va, int vb);

// Structural check. "IndexRange": edge/face refers to a missing cell.
// "OpenFaceWalk": a face walk is not a closed connected path.
// "EdgeFaceCount": an edge does not appear in faces exactly twice with
// opposite signs (expected for closed complexes; faceless fixtures trip it
// harmlessly).
std::vector<Violation> validate(const Complex2& c);

// Edges incident to v with their incidence, ascending edge index.
// A self-loop at v reports once, as Loop.
std::vector<StarEntry> vertex_star(const Complex2& c, int v);

}  // namespace qdm::cell
