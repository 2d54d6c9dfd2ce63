"""Three chains: the ideal is an intersection of primes, checked by elimination."""

from jmlat import certify_radical, build_Lk, verify_decomposition

L = build_Lk(3, 1, 1)
print("squarefree under the default order?", certify_radical(L).verdict)

cert = verify_decomposition(3, 1, 1)
for p in cert.to_dict()["primes"]:
    print(f"  {p['method']:<44} {', '.join(p['generators'])}")
print("intersection equals I_L:", cert.conclusion)
