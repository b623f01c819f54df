pub struct UnionFind {
    parents: Vec<usize>,
    sizes: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        Self {
            parents: (0..size).collect(),
            sizes: vec![1; size],
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        let mut root = i;
        while self.parents[root] != root {
            root = self.parents[root];
        }
        while i != root {
            let parent = self.parents[i];
            self.parents[i] = root;
            i = parent;
        }
        root
    }

    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (i, j) = (self.find(i), self.find(j));
        if i == j {
            return false;
        }
        if self.sizes[i] < self.sizes[j] {
            self.parents[i] = j;
            self.sizes[j] += self.sizes[i];
        } else {
            self.parents[j] = i;
            self.sizes[i] += self.sizes[j];
        }
        true
    }
}
