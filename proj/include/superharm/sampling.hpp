#pragma once

#include "superharm/scalar.hpp"
#include <random>
#include <vector>

namespace superharm {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

inline Rat random_rational(std::mt19937_64 &rng, int bound = 6)
{
	std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
	return make_rat(num(rng), den(rng));
}

inline ScalarMatrix identity_matrix(int n)
{
	ScalarMatrix A(n, std::vector<Scalar>(n));
	for (int i = 0; i < n; ++i)
		A[i][i] = Scalar(1);
	return A;
}

inline ScalarMatrix mat_mul(ScalarMatrix const &A, ScalarMatrix const &B)
{
	int n = (int)A.size();
	ScalarMatrix C(n, std::vector<Scalar>(n));
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			if (A[i][k].is_zero())
				continue;
			for (int j = 0; j < n; ++j)
				if (!B[k][j].is_zero())
					C[i][j] += A[i][k] * B[k][j];
		}
	return C;
}

// rational rotations from Pythagorean pairs, together with permutations and
// sign flips: a seedable source of exactly orthogonal matrices
inline ScalarMatrix random_orthogonal(int m, std::mt19937_64 &rng, int factors = 4)
{
	static const std::pair<int, int> triples[] = {{3, 4}, {5, 12}, {8, 15}, {20, 21}};
	ScalarMatrix A = identity_matrix(m);
	if (m < 2)
		return A;
	std::uniform_int_distribution<int> pick(0, m - 1), tri(0, 3), flip(0, 1);
	for (int f = 0; f < factors; ++f)
	{
		int i = pick(rng), j = pick(rng);
		if (i == j)
			continue;
		auto [a, b] = triples[tri(rng)];
		long h = std::lround(std::sqrt((double)(a * a + b * b)));
		ScalarMatrix G = identity_matrix(m);
		G[i][i] = Scalar(make_rat(a, h));
		G[j][j] = Scalar(make_rat(a, h));
		G[i][j] = Scalar(make_rat(-b, h));
		G[j][i] = Scalar(make_rat(b, h));
		if (flip(rng))
		{
			for (int r = 0; r < m; ++r)
				G[r][i] = -G[r][i];
		}
		A = mat_mul(A, G);
	}
	return A;
}

// random element of Sp(2n, Q) for the pairwise form J = diag([[0,1],[-1,0]],...),
// built from the standard generators in the Darboux basis and conjugated by
// the coordinate interleaving
inline ScalarMatrix random_symplectic(int n, std::mt19937_64 &rng, int factors = 3)
{
	int g = 2 * n;
	// P maps pair coordinates (x1,y1,x2,y2,...) to (x1,...,xn, y1,...,yn)
	std::vector<int> perm(g);
	for (int i = 0; i < n; ++i)
	{
		perm[2 * i] = i;         // odd generator -> position i
		perm[2 * i + 1] = n + i; // even generator -> position n+i
	}
	ScalarMatrix S = identity_matrix(g); // in Darboux coordinates
	std::uniform_int_distribution<int> kind(0, 2), flip(0, 1);
	for (int f = 0; f < factors; ++f)
	{
		ScalarMatrix Gd = identity_matrix(g);
		int which = kind(rng);
		if (which == 0 || which == 1)
		{
			// [[I, B],[0, I]] or [[I, 0],[B, I]] with symmetric B
			std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n, Rat(0)));
			for (int i = 0; i < n; ++i)
				for (int j = i; j < n; ++j)
					B[i][j] = B[j][i] = random_rational(rng, 3);
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
				{
					if (which == 0)
						Gd[i][n + j] = Scalar(B[i][j]);
					else
						Gd[n + i][j] = Scalar(B[i][j]);
				}
		}
		else
		{
			// diag(A, A^{-T}) with A unit upper triangular
			std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
			for (int i = 0; i < n; ++i)
			{
				A[i][i] = 1;
				for (int j = i + 1; j < n; ++j)
					A[i][j] = random_rational(rng, 3);
			}
			// inverse-transpose of a unit upper triangular matrix by back
			// substitution
			std::vector<std::vector<Rat>> Ainv(n, std::vector<Rat>(n, Rat(0)));
			for (int i = n - 1; i >= 0; --i)
			{
				Ainv[i][i] = 1;
				for (int j = i + 1; j < n; ++j)
				{
					Rat s = 0;
					for (int k = i + 1; k <= j; ++k)
						s += A[i][k] * Ainv[k][j];
					Ainv[i][j] = -s;
				}
			}
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
				{
					Gd[i][j] = Scalar(A[i][j]);
					Gd[n + i][n + j] = Scalar(Ainv[j][i]);
				}
		}
		S = mat_mul(S, Gd);
	}
	// conjugate back into the interleaved pair basis
	ScalarMatrix R(g, std::vector<Scalar>(g));
	for (int i = 0; i < g; ++i)
		for (int j = 0; j < g; ++j)
			R[i][j] = S[perm[i]][perm[j]];
	return R;
}

// block diag(orthogonal m x m, symplectic 2n x 2n)
inline ScalarMatrix random_g_orthogonal(int m, int n, std::mt19937_64 &rng)
{
	int N = m + 2 * n;
	ScalarMatrix A = identity_matrix(N);
	ScalarMatrix O = random_orthogonal(m, rng);
	ScalarMatrix S = random_symplectic(n, rng);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			A[i][j] = O[i][j];
	for (int i = 0; i < 2 * n; ++i)
		for (int j = 0; j < 2 * n; ++j)
			A[m + i][m + j] = S[i][j];
	return A;
}

} // namespace superharm
